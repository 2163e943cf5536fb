"""Domain layer - algebra, geometry and classification logic."""
