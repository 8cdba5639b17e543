from urllib.request.pyplot import x, x as pd
from mod9.core.request import b_c as np
# import commented_out
