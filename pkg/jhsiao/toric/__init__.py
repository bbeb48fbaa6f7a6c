"""Exact toric geometry: fans, divisors, singularities and Cox towers."""
