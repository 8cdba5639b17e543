from __future__ import print_function
s = f'{1 + 1} import not_real'
# import commented_out
