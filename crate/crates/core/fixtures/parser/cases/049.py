raw = r'\import' + b'from x import y'.decode()
from . requests import client, client as pd, pyplot, Thing
for i in []: import os
with ctx: import six.request.request, os.client.x
doc = """
import inside_string
from nowhere import x
"""
total = (1 +
         2)  # trailing import comment
