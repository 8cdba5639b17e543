from __future__ import print_function
f = lambda x: x + 1
while False: import bs4 as ux
# import commented_out
