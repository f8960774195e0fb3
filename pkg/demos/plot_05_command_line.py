"""
The command line
================

The ``apolarity`` command wraps the library; here it is driven in-process.
"""

import io

from apolarity.cli import main

out = io.StringIO()
main(["analyze", "--expr", "x0*x3^2+x1*x3*x4+x2*x4^2", "--format", "text"], out=out)
print(out.getvalue())

out = io.StringIO()
main(["loci", "--which", "cone-formula"], out=out)
print(out.getvalue())

out = io.StringIO()
main(["jordan", "--expr", "x0^3+x1^3+x2^3+x3^3+x4^3", "--element", "1,0,0,0,0"], out=out)
print(out.getvalue())
