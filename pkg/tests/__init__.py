# tests/__init__.py
"""Test package for the Routh-Hurwitz toolkit"""
