import dataclasses
from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from typing import Any, List, Optional, Type, TypeVar, Union

_C = TypeVar("_C")


@dataclass(frozen=True)
class ConfigArg:
    """Dataclass to represent one field of a configuration dataclass."""

    name: str
    types: tuple
    default: Any
    context: Optional[str] = None


def gather_config_args(cls: Type[Any]) -> List[ConfigArg]:
    """Collect the typed fields of a configuration dataclass, in declaration order.

    Fields annotated ``Optional[T]`` report ``(T, NoneType)`` as types so the command line parser can use ``T``.
    """
    if not dataclasses.is_dataclass(cls):
        raise TypeError(f"{cls!r} is not a dataclass")

    arguments: List[ConfigArg] = []
    for field in dataclasses.fields(cls):
        field_type = field.type
        if getattr(field_type, "__origin__", None) is Union:
            types = tuple(t for t in field_type.__args__ if t is not type(None)) + (type(None),)
        else:
            types = (field_type,)
        if field.default is not dataclasses.MISSING:
            default = field.default
        elif field.default_factory is not dataclasses.MISSING:  # type: ignore[misc]
            default = field.default_factory()  # type: ignore[misc]
        else:
            raise RuntimeError(f"Configuration field '{field.name}' needs a default to be exposed as a flag")
        arguments.append(ConfigArg(name=field.name, types=types, default=default, context=cls.__name__))
    return arguments


def add_config_args(parser: ArgumentParser, cls: Type[Any], defaults: Optional[Any] = None) -> ArgumentParser:
    """Add one ``--<field>`` flag per configuration field.

    Args:
        parser: parser (or argument group owner) receiving the flags
        cls: configuration dataclass
        defaults: instance whose values override the dataclass defaults, e.g. one read from the environment
    """
    group = parser.add_argument_group(cls.__name__)
    for arg in gather_config_args(cls):
        default = getattr(defaults, arg.name) if defaults is not None else arg.default
        group.add_argument(f"--{arg.name}", type=arg.types[0], default=default)
    return parser


def config_from_args(args: Namespace, cls: Type[_C]) -> _C:
    """Instantiate the configuration dataclass from parsed flags, ignoring unrelated arguments."""
    names = {arg.name for arg in gather_config_args(cls)}
    return cls(**{k: v for k, v in vars(args).items() if k in names})  # type: ignore[call-arg]
