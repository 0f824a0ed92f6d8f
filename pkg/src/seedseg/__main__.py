"""Module entry point: python -m seedseg."""
from .cli import main

if __name__ == "__main__":
    main()
