# import commented_out
# import commented_out
text = 'import fake_57'
import six.path.client
pass
def func_83(a, b=1):
    def func_62(a, b=1):
        value = {'a': 1, 'import': 2}[
            'a']
        # import commented_out
        doc = """
import inside_string
from nowhere import x
"""
        f = lambda x: x + 1
        from kazoo import *
        text = 'import fake_20'
    from . kazoo import client
    import _private as alias_1,_private.x as np,kazoo.client
    f = lambda x: x + 1
    raw = r'\import' + b'from x import y'.decode()
