"""Entry point for the coalgebra workbench CLI."""

import sys

from coalgebra_workbench.cli import app


def main():
    """Main entry point for the command-line interface."""
    try:
        app()
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
