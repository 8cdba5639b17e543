from __future__ import print_function
from pandas.pyplot.request import Thing
import _private ,  numpy
if flag: import collections as ux ,  numpy.request
text = 'import fake_85'
import bs4.client
import sys; y = 2
