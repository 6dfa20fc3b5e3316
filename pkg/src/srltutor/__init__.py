"""Self-regulated learning backend with knowledge mind-maps and LLM tooling."""

__version__ = "0.1.0"
