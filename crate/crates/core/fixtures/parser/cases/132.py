#!/usr/bin/env python
from .. import pyplot
doc = """
import inside_string
from nowhere import x
"""
