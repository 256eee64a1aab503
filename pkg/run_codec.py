#!/usr/bin/env python3
"""
permucodec - Source-tree runner

Runs the command-line front end without installing the package.

Usage:
    python run_codec.py encode <input> <message> --mode <mode> [options]
    python run_codec.py decode <message> <output> [options]
    python run_codec.py info <input> --mode <mode> [options]
"""

import os
import sys

PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(PROJECT_ROOT, 'src'))

from permucodec.cli.main import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
