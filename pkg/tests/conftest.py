import os

# at 256 dimensions the LAPACK thread pool costs more than it saves; the
# heavy scans parallelize over cells instead
os.environ.setdefault("OMP_NUM_THREADS", "1")
os.environ.setdefault("OPENBLAS_NUM_THREADS", "1")
os.environ.setdefault("MKL_NUM_THREADS", "1")

from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def canonical_encoding():
    """Reference strict encodings, one printed bit string per path position."""

    def load(n: int) -> list[str]:
        return (DATA_DIR / f"canonical_encoding_n{n}.txt").read_text().split()

    return load
