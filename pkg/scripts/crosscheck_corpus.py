""" Cross-check the acceptance corpus and write the results to a CSV

python scripts/crosscheck_corpus.py results.csv
"""
import logging
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from classify import cross_check  # noqa: E402
from data.corpus import acceptance_corpus  # noqa: E402
from tables.raw import make_reports_frame  # noqa: E402

logging.basicConfig(level=os.getenv("LOG_LEVEL", "INFO").upper())
logger = logging.getLogger(__name__)


def crosscheck_corpus(filename: str):
    reports = [cross_check(p) for p in acceptance_corpus()]
    df = make_reports_frame(reports)
    df.to_csv(filename, index=False)

    disagreements = int((~df["agree"].astype(bool)).sum())
    logger.info(f"Wrote {len(df)} rows to {filename}, {disagreements} disagreement(s)")
    return disagreements


if __name__ == "__main__":
    filename = sys.argv[1] if len(sys.argv) > 1 else "crosscheck_corpus.csv"
    sys.exit(1 if crosscheck_corpus(filename) else 0)
