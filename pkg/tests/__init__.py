"""Test package for the HitRatio toolkit."""
