"""Infrastructure layer - configuration, logging and artifact files."""
