import sys
from   twistcert.cli import main
sys.exit(main())
# EOF
