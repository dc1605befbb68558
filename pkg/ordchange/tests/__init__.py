"""Tests for ordchange"""
