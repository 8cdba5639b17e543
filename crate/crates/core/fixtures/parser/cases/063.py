import os,urllib
x = 1; import collections, _private.pyplot as plt, pandas.x
