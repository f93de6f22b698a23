"""
Kernel operations, one package per concern.
"""
