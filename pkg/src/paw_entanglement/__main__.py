from paw_entanglement.figcli.main import main

raise SystemExit(main())
