"""
Hodge Atlas - Entry point for CLI execution.

Allows running the package as a module: python -m hodge_atlas
"""

from hodge_atlas.cli import main
import sys

if __name__ == '__main__':
    sys.exit(main())
