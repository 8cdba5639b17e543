f = lambda x: x + 1
import i3,urllib.parse.x
text = 'import fake_55'
import pandas.pyplot
from bs4 import *
from pandas import (
    path,
    core,
    pyplot,
    a,
)
