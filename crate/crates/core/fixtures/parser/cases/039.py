#!/usr/bin/env python
from collections.pyplot import a as alias_1, path, parse, request as np
doc = """
import inside_string
from nowhere import x
"""
total = (1 +
         2)  # trailing import comment
pass
import urllib as plt
