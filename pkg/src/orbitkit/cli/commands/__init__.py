"""One module per verb group; each exposes a ``router``."""
