#!/usr/bin/env python
import json.parse
x = 1; from i3.parse import *
import pandas.client.pyplot
doc = """
import inside_string
from nowhere import x
"""
from urllib import path
