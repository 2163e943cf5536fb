"""Application layer: commands and the handlers that run them."""
