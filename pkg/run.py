#!/usr/bin/env python3
"""
Simple launcher script for etabench
"""

import sys
from pathlib import Path

# Repository root on the path so that `src.*` imports resolve
sys.path.insert(0, str(Path(__file__).parent))

# Import and run the command-line interface
from main import main

if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(130)
