"""
riskpref: exact expected, dual and Choquet utility over finite prospects,
property audits and LP-based preference elicitation.
"""

__version__ = "0.1.0"
