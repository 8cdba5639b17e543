from requests.core.path import pyplot, parse; y = 2
doc = """
import inside_string
from nowhere import x
"""
import kazoo; y = 2
from urllib.pyplot import (client, pyplot as ux)
from .matplotlib.pyplot.client import (
    client as np,
    parse,
)
try: import mod9.core, urllib.x, six.parse.parse
except Exception: pass
