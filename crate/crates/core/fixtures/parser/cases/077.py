#!/usr/bin/env python
from __future__ import print_function
for item in range(3):
    from yaml import parse, a
    from numpy import (
        request as np,
        request,
    )
    total = (1 +
             2)  # trailing import comment
    doc = """
import inside_string
from nowhere import x
"""
x = 1; import mod9.pyplot ,  i3.parse ,  os.client
import mod9.x,kazoo.pyplot
# import commented_out
