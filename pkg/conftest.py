import pathlib
import sys

# Let the suite run straight from a checkout, installed or not.
sys.path.insert(0, str(pathlib.Path(__file__).parent / "src"))
