"""Allow ``python -m dimercorr`` to behave like the console script."""

from .cli import entry

if __name__ == "__main__":
    entry()
