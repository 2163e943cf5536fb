"""Domain services: exact algebra, Groebner bases, syzygies and the genus-9 toolkit."""
