"""python -m ordchange"""
import sys

from .cli import main

sys.exit(main())
