import sys
from pathlib import Path

# Allow the plain-module imports (gen, oracles) used across the suite.
sys.path.insert(0, str(Path(__file__).resolve().parent))
