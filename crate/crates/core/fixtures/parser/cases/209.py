import kazoo.parse as pd,collections.path
for item in range(3):
    from bs4 import *
    import bs4.core
import urllib,mod9
from collections.client.request import (request)
