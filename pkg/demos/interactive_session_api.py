"""Drive the HTTP session service in-process, no network required.

Walks a full identification session (the Twenty-Questions loop) and an
oracle-mode battleship game through the same JSON endpoints the web UI
uses.
"""

from fastapi.testclient import TestClient

from migc.service import create_app

client = TestClient(create_app())

# --- identification session --------------------------------------------------

created = client.post("/sessions", json={
    "dist": {"labels": ["ant", "bee", "cat", "dog"], "probs": [0.1, 0.4, 0.2, 0.3]},
    "qset": {"d": 2, "queries": [
        {"id": 0, "cells": [[0, 1]]},
        {"id": 1, "cells": [[1, 2]]},
        {"id": 2, "cells": [[2, 3]]},
    ]},
}).json()
print("session", created["id"][:8], "first question:", created["query"])

state = created
while not state["done"]:
    # always answer "first option" here; a human would click a button
    answer = state["query"]["options"][0]["answer"]
    state = client.post(
        f"/sessions/{created['id']}/answer", json={"answer": answer}
    ).json()
    print("answered", answer, "->", state["query"] or state["result"])

print("identified", state["result"]["label"], "in",
      state["result"]["questions"], "questions\n")

# --- oracle-mode battleship ---------------------------------------------------

game = client.post("/battleship", json={
    "config": {"rows": 5, "cols": 5, "fleets": [[3], [2]],
               "layout_count": 200, "seed": 3},
    "mode": "oracle",
}).json()
print("battleship", game["id"][:8], "entropy",
      f"{game['entropy_trits']:.2f}", "trits")

trace = [game["entropy_trits"]]
while True:
    rec = client.get(f"/battleship/{game['id']}/recommendation")
    if rec.status_code != 200:
        break
    cell = rec.json()["cell"]
    result = client.post(f"/battleship/{game['id']}/result", json={"cell": cell}).json()
    trace.append(result["entropy_trits"])
    print(f"  fired {cell} -> {result['answer']:<7} "
          f"entropy {result['entropy_trits']:.2f} trits,"
          f" {result['remaining']} layouts left")
    if result["done"]:
        break

heat = client.get(f"/battleship/{game['id']}/heatmap").json()
print("final heatmap has", len(heat["cells"]), "cells; trace:",
      " ".join(f"{h:.2f}" for h in trace))
