from __future__ import print_function
import mod9 as ux ,  requests as plt ,  pandas.x.core
import sys.client
x = 1; from pandas.request import b_c, request as alias_1, parse, x
text = 'import fake_40'
from . _private import x as ux
import pandas.client.x as pd
