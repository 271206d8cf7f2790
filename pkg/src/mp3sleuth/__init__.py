"""mp3sleuth: MP3 side-information forensics.

Parses MPEG-1 Layer III bitstreams, extracts encoder-classification and
calibrated steganalysis features, and trains/evaluates SVM classifiers for
encoder fingerprinting and mp3stego detection.  A synthetic generator keeps
every statistical claim testable without a real encoder corpus.
"""

from .errors import Mp3SleuthError

__version__ = "0.1.0"

__all__ = ["Mp3SleuthError", "__version__"]
