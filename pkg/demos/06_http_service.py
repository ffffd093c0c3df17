"""Drive a classification session over the HTTP service.

The service owns one session at a time and writes every decision to disk
before answering, so a crash never loses work. This script starts a server on
an ephemeral port, answers the first few queries like a browser client would,
then shows the session surviving a simulated restart.
"""

import json
import shutil
import tempfile
import threading
import urllib.request
from pathlib import Path

from kwextract.persistence import init_workspace_dirs
from kwextract.service import KeywordService, make_server
from kwextract.workspace import WorkspaceConfig, save_config

DATA = Path(__file__).resolve().parent.parent / "data"

workspace = Path(tempfile.mkdtemp(prefix="kwextract_demo_"))
init_workspace_dirs(workspace)
save_config(WorkspaceConfig(corpus_dir=str(DATA / "zipf100")), workspace)

service = KeywordService(workspace)
server = make_server(service, "127.0.0.1", 0)
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{port}"
print(f"service listening on {base}")


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    request = urllib.request.Request(base + path, data=data, method=method)
    with urllib.request.urlopen(request) as response:
        return json.loads(response.read())


created = call("POST", "/api/sessions", {"m": 5, "seed": 11})
session_id = created["session_id"]
print(f"created session {session_id[:8]}... over m={created['progress']['abstracts_total']} abstracts")

stoplist = set((DATA / "stoplist.txt").read_text().split())
for _ in range(8):
    step = call("GET", f"/api/sessions/{session_id}/next")
    if step.get("complete"):
        break
    accept = step["word"] not in stoplist
    print(f"  {step['word']:<16} ({step['context_before'][-20:]} >>{step['surface']}<<) "
          f"-> {'accept' if accept else 'reject'}")
    call("POST", f"/api/sessions/{session_id}/decision",
         {"word": step["word"], "accept": accept})

progress = call("GET", "/api/session")["session"]["progress"]
print(f"progress so far: {progress['words_classified']} classified "
      f"({progress['accept_count']} accepted)")

server.shutdown()
server.server_close()
print()
print("restarting the service on the same workspace...")
revived = KeywordService(workspace)
print(f"revived session knows {len(revived.session.query_log)} decisions; "
      f"pending word is {revived.session.pending!r}")

shutil.rmtree(workspace)
