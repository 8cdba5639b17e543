from __future__ import print_function
from .mod9.request import client as plt, core, path, core
s = f'{1 + 1} import not_real'
import six
