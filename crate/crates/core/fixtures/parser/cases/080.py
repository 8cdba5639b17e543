from bs4 import *
total = (1 +
         2)  # trailing import comment
