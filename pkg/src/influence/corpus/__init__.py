"""Worked examples shipped with the package: networks N1 and N2, sociograms
S1-S3, and derivation scripts for three validities on S1, S2 and S3."""
from importlib import resources
from pathlib import Path


def path(name: str) -> Path:
    """Filesystem path of a bundled corpus file, e.g. ``path("s1.json")``."""
    return Path(str(resources.files(__name__).joinpath(name)))
