"""Core domain logic and schemas."""
