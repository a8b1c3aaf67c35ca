"""Verification runners."""
