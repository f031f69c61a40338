"""Simplify a characteristic foliation and read off the Bennequin slack."""
from ratknot.foliation import add_canceling_pair, counts, dump_graph, graph_sl, normalize, parse_graph
from ratknot.invariants import bennequin_slack

g = parse_graph(
    """
    N a e +
    N b e +
    N H h -
    N P e -
    E a H
    E b H
    E H P
    E H ∂
    """
)
r = 3
chi = counts(g).index_sum
print("start:", counts(g).as_dict(), "sl =", graph_sl(g, r))

g = add_canceling_pair(g, "+", 0)
print("after inserting a positive pair:", counts(g).as_dict(), "sl =", graph_sl(g, r))

res = normalize(g, r)
print(f"normalized with {res.cancellations} cancellation(s); overtwisted: {res.overtwisted}")
print(dump_graph(res.graph), end="")
sl = graph_sl(res.graph, r)
print("sl =", sl, "slack =", bennequin_slack(sl, chi, r))

trapped = parse_graph("N a e +\nN b e +\nN H h +\nN P e -\nE a H\nE b H\nE H P\nE H ∂\n")
cert = normalize(trapped).certificate
print("sink", cert.sink, "is fed only by", sorted(cert.frontier))
