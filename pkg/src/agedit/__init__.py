"""agedit: face aging + attribute editing GANs at desk scale."""

__version__ = "0.1.0"
