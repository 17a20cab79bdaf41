#!/usr/bin/env python3
"""
dlab
Diametral-point diagnostics from the command line; see `python dlab.py --help`
"""
import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
