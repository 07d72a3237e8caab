"""Run the degcx command line from a checkout: ``python degcx.py verify all``."""
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
