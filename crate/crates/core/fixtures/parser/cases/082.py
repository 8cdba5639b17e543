# import commented_out
import matplotlib.core
