#!/usr/bin/env python
import os.core.request as pd, pandas.x as ux
doc = """
import inside_string
from nowhere import x
"""
if flag: import json.request,os
