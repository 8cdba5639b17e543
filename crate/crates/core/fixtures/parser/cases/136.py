import sys.pyplot.core
for i in []: import pandas.parse ,  yaml.x ,  urllib as plt
value = {'a': 1, 'import': 2}[
    'a']
total = (1 +
         2)  # trailing import comment
if flag: import sys.pyplot,kazoo
total = (1 +
         2)  # trailing import comment
