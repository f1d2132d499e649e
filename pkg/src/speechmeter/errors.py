"""Exception hierarchy shared by all speechmeter modules.

Every domain error derives from SpeechmeterError so batch drivers can
catch one base class and keep going; I/O problems use the builtin OSError.
"""


class SpeechmeterError(Exception):
    """Base class for all speechmeter domain errors."""


# --- audio_io ---------------------------------------------------------------

class NotWavError(SpeechmeterError):
    """File is not a RIFF/WAVE container."""


class UnsupportedEncodingError(SpeechmeterError):
    """WAV file is not 16-bit PCM mono."""


class SilentInputError(SpeechmeterError):
    """Operation needs a nonzero signal but got digital silence."""


class TooShortError(SpeechmeterError):
    """Signal shorter than one analysis frame."""


# --- vad_rate ---------------------------------------------------------------

class EmptyTrackError(SpeechmeterError):
    """Energy track has no frames."""


class ZeroDurationError(SpeechmeterError):
    """Rate denominator is zero or negative."""


class NoSpeechDetectedError(SpeechmeterError):
    """Speech mask contains no speech frames."""


# --- snr --------------------------------------------------------------------

class DegenerateDataError(SpeechmeterError):
    """Sample set carries no usable spread (e.g. all values identical)."""


class TooFewFramesError(SpeechmeterError):
    """Not enough frames for a stable estimate."""


# --- distance / fmat --------------------------------------------------------

class DimensionMismatchError(SpeechmeterError):
    """Feature dimensionalities disagree."""


class IntervalOutOfRangeError(SpeechmeterError):
    """Word interval lies outside the utterance (beyond one frame of slack)."""


class NoReferenceError(SpeechmeterError):
    """No reference occurrence of a word after speaker exclusion."""


class EmptyUtteranceError(SpeechmeterError):
    """Utterance-level reduction got an empty score list."""


class FmatError(SpeechmeterError):
    """Feature matrix file is malformed."""


# --- per --------------------------------------------------------------------

class EmptyReferenceError(SpeechmeterError):
    """Reference phoneme sequence is empty."""


# --- xppg_pca ---------------------------------------------------------------

class InsufficientDataError(SpeechmeterError):
    """Too few training utterances for a fit."""


class AllConstantError(SpeechmeterError):
    """Every feature dimension is constant; no principal direction exists."""


# --- stats ------------------------------------------------------------------

class EmptyError(SpeechmeterError):
    """Statistic of an empty value list."""


class IncompleteMatrixError(SpeechmeterError):
    """Rating matrix has missing cells or too few rows/columns."""


class ZeroVarianceError(SpeechmeterError):
    """Agreement statistic undefined: no variance to apportion."""


class LengthMismatchError(SpeechmeterError):
    """Paired vectors have different lengths."""


class ConstantInputError(SpeechmeterError):
    """Correlation of a constant vector is undefined."""


# --- pipeline ---------------------------------------------------------------

class ParseError(SpeechmeterError):
    """Manifest or table file could not be parsed."""


class MissingFileError(SpeechmeterError):
    """Manifest references a file that does not exist."""


class DuplicateUtteranceError(SpeechmeterError):
    """Two manifest entries share an utterance id."""


class RunError(SpeechmeterError):
    """Batch produced zero successful utterances."""
