from nqa.cli import main

raise SystemExit(main())
