import json
from itertools import zip_longest
from typing import Any, Dict, List, Mapping, Optional


def dicts_to_table(dicts: List[Dict], keys: Optional[List[str]] = None, pads: Optional[List[str]] = None) -> str:
    """Generate an ascii table from a list of flat dictionaries.

    Args:
        dicts: rows; empty lists make ``keys`` mandatory
        keys: ordered columns, defaults to the keys of the first row
        pads: per-column padding codes, eg ``<10`` to left-align on ten characters

    Example:

        >>> print(dicts_to_table([{'check': 'integer', 'passed': True}, {'check': 'gap', 'passed': False}]))
        check│passed
        ────────────
        integer│True
        gap│False
    """
    if keys is None:
        if not dicts:
            raise ValueError("keys are mandatory on empty input list")
        keys = list(dicts[0].keys())
    if pads is None:
        pads = [""] * len(keys)
    elif len(pads) != len(keys):
        raise ValueError(f"bad pad length {len(pads)}, expected: {len(keys)}")

    headline = "│".join(f"{k:{pad}}" for k, pad in zip_longest(keys, pads))
    lines = [headline, "─" * len(headline)]
    for d in dicts:
        lines.append("│".join(f"{_cell(d.get(k)):{pad}}" for k, pad in zip_longest(keys, pads)))
    return "\n".join(lines)


def evidence_to_table(evidence: Mapping[str, Any]) -> str:
    """Render a verdict's evidence mapping as a two-column ``key│value`` table.

    >>> print(evidence_to_table({'delta': 5, 'a': 1}))
    key│value
    ─────────
    delta│5
    a│1
    """
    return dicts_to_table([{"key": k, "value": v} for k, v in evidence.items()], keys=["key", "value"])


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, default=str)
    return str(value)
