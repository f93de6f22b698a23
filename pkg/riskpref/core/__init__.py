"""
Cross-cutting concerns: errors, logging, run context, metrics, numbers.
"""
