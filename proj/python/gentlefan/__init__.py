from ._gentlefan import *  # noqa: F401,F403
