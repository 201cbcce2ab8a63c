"""Topic and topic-burst mapping for time-stamped publication corpora.

Thin wrapper around the C++ extension module; every public name is
re-exported from ``topicburst._core``.
"""

from topicburst._core import *  # noqa: F401,F403
from topicburst._core import __doc__  # noqa: F401

__version__ = "0.1.0"
