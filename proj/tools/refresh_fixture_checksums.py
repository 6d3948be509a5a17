"""Rewrite the sha256 fields of data/named/manifest.json from the fixture files."""
import hashlib
import json
import pathlib
import sys

root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/named")
manifest = json.loads((root / "manifest.json").read_text())
for entry in manifest["graphs"]:
    if entry.get("file"):
        entry["sha256"] = hashlib.sha256((root / entry["file"]).read_bytes()).hexdigest()
(root / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
