import pytest
from hypothesis import given, strategies as st

from realschubert.combinatorics import Tableau, enumerate_ssyt, kostka, valid_contents
from realschubert.errors import MalformedNet, MalformedTableau
from realschubert.nets import (BlockStructure, Net, bijection_report, enumerate_nets,
                               net_to_ssyt, ssyt_to_net)

from conftest import brute_force_nets
from test_combinatorics import contents


def edges(nets):
    return [set(n.edges) for n in nets]


def test_block_structure():
    b = BlockStructure.from_content((2, 1, 1))
    assert b.vertex_count == 4
    assert [b.block(v) for v in range(1, 5)] == [1, 1, 2, 3]
    assert b.vertices(1) == [1, 2]


class TestEnumerate:
    def test_d2(self):
        assert edges(enumerate_nets(BlockStructure.from_content((1, 1)))) == [{(1, 2)}]

    def test_d3_ones(self):
        assert edges(enumerate_nets(BlockStructure.from_content((1, 1, 1, 1)))) == [
            {(1, 2), (3, 4)}, {(1, 4), (2, 3)}]

    def test_22(self):
        assert edges(enumerate_nets(BlockStructure.from_content((2, 2)))) == [{(1, 4), (2, 3)}]

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_matches_brute_force(self, d):
        for cv in valid_contents(d):
            got = [n.edges for n in enumerate_nets(BlockStructure.from_content(cv))]
            assert got == brute_force_nets(cv.entries)
            assert len(got) == kostka(cv)


class TestNetValidity:
    b = BlockStructure.from_content((1, 1, 1, 1))

    def test_crossing_rejected(self):
        net = Net(self.b, ((1, 3), (2, 4)))
        assert not net.is_valid()
        with pytest.raises(MalformedNet):
            net_to_ssyt(net)

    def test_intra_block_rejected(self):
        net = Net(BlockStructure.from_content((2, 2)), ((1, 2), (3, 4)))
        assert any("block" in v for v in net.violations())
        with pytest.raises(MalformedNet):
            net_to_ssyt(net)

    def test_not_perfect_rejected(self):
        with pytest.raises(MalformedNet):
            net_to_ssyt(Net(self.b, ((1, 2),)))


class TestBijection:
    def test_part_a_examples(self):
        b = BlockStructure.from_content((1, 1, 1, 1))
        assert net_to_ssyt(Net(b, ((1, 2), (3, 4)))) == Tableau((1, 3), (2, 4))
        assert net_to_ssyt(Net(b, ((1, 4), (2, 3)))) == Tableau((1, 2), (3, 4))
        b22 = BlockStructure.from_content((2, 2))
        assert net_to_ssyt(Net(b22, ((1, 4), (2, 3)))) == Tableau((1, 1), (2, 2))

    def test_part_b_examples(self):
        assert set(ssyt_to_net(Tableau((1, 2), (3, 4))).edges) == {(2, 3), (1, 4)}
        assert set(ssyt_to_net(Tableau((1, 3), (2, 4))).edges) == {(1, 2), (3, 4)}
        assert set(ssyt_to_net(Tableau((1, 1), (2, 2))).edges) == {(2, 3), (1, 4)}

    def test_malformed_tableau(self):
        with pytest.raises(MalformedTableau):
            ssyt_to_net(Tableau((2, 2), (1, 1)))

    @given(contents())
    def test_round_trips(self, entries):
        blocks = BlockStructure.from_content(entries)
        nets = enumerate_nets(blocks)
        tabs = enumerate_ssyt(entries)
        assert len(nets) == len(tabs) == kostka(entries)
        for net in nets:
            assert ssyt_to_net(net_to_ssyt(net), blocks) == net
        for tab in tabs:
            assert net_to_ssyt(ssyt_to_net(tab, blocks)) == tab
        assert sorted(net_to_ssyt(n) for n in nets) == sorted(tabs)

    def test_report_small(self):
        rows = bijection_report(4)
        assert rows and all(r["ok"] for r in rows)
        assert {r["d"] for r in rows} == {2, 3, 4}
