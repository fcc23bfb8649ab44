import sys

from qwalk_bolts.cli import cli_main

if __name__ == "__main__":
    sys.exit(cli_main())
