# import commented_out
for i in []: import i3.client as pd,matplotlib
def func_33(a, b=1):
    import requests as alias_1
    # import commented_out
    doc = """
import inside_string
from nowhere import x
"""
    try: import six as ux
    except Exception: pass
    if cond:
        doc = """
import inside_string
from nowhere import x
"""
        if flag: import bs4.client.x,bs4.core.core,urllib.client as pd
        from mod9.request import a, path, request, parse
        import _private
        f = lambda x: x + 1
    class K8(object):
        pass
        text = 'import fake_99'
text = 'import fake_5'
