import sys

from dotenv import load_dotenv

# LOG_LEVEL must be in the environment before the logger is configured
load_dotenv()

from src.cli.app import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run())
