import sys

from fpsrewrite.core.cli import run

if __name__ == '__main__':
    sys.exit(run())
