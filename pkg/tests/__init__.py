"""Tests for Stable Sections."""
