# -*- coding: utf-8 -*-
"""Serialize command results.

Every command produces a plain dict whose first key is ``command``. The
:class:`Json` and :class:`Yaml` writers dump it as is; :class:`Text` renders
it in words.
"""

from __future__ import print_function
import json

from yaml import safe_dump as yamldump


class Json(object):
    """Write a result as a single JSON document
    """

    def dump(self, data):
        return json.dumps(data, indent=2, ensure_ascii=False)


class Yaml(object):
    """Write a result as YAML
    """

    def dump(self, data):
        return yamldump(data, default_flow_style=False, sort_keys=False, allow_unicode=True)


def _article(n):
    s = str(n)
    if s.startswith('8') or s in ('11', '18') or (len(s) % 3 == 2 and s[:2] in ('11', '18')):
        return "an"
    return "a"


def _plural(count, word):
    return "%d %s%s" % (count, word, "" if count == 1 else "s")


class Text(object):
    """Write a result for people to read
    """

    def dump(self, data):
        render = getattr(self, '_' + data['command'])
        return "\n".join(render(data)) + "\n"

    def _report(self, d):
        lines = ["%s at p=%d (%s cooperations)" % (d['spectrum'], d['prime'], d['coop_class'])]
        n = d['degree_count_bound']
        lines.append("  degree count: first window at n=%d" % n)
        if d['refined_bound'] is not None:
            lines.append("  refined bound: first window at n=%d" % d['refined_bound'])
        stage = d['stage_bound']
        lines.append("  %s admits at least %s %d-stage structure" % (d['spectrum'], _article(stage), stage))
        u = d['uniqueness_bound']
        lines.append("  an extension of a 3-stage structure is unique up to the %d-stage" % u)

        w = d['witness']
        if w.get('kind') == 'kochman':
            lines.append("  witness: %s in degree %d = n-1 with n=%d, n-2 = %s" % (
                w['generator'], w['kochman_degree'], w['window'], w['decomposition']))
        elif w:
            on_line = " on the %s line" % w['line'] if 'line' in w else ""
            lines.append("  witness: degree %d = %s (window n=%d%s)" % (
                w['degree'], w['decomposition'], w['window'], on_line))

        if d.get('exploratory_windows') is not None:
            lines.append("exploratory windows:")
            for e in d['exploratory_windows']:
                lines.append("  n=%d: Kochman degree %d = n-1 + %d" % (e['n'], e['kochman_degree'], e['shift']))
            if not d['exploratory_windows']:
                lines.append("  none")
        if d['notes']:
            lines.append("notes:")
            lines.extend("  - %s" % note for note in d['notes'])
        return lines

    def _kochman(self, d):
        lines = ["Kochman basis at p=%d up to degree %d" % (d['prime'], d['max_degree']),
                 "least odd degree: %d" % d['min_odd_degree']]
        for degree, generators in d['degrees'].items():
            lines.append("degree %s: %s" % (degree, ", ".join(generators)))
        return lines

    def _trees(self, d):
        lines = []
        for k, count in d['counts'].items():
            lines.append("%s: %s" % (_plural(int(k), "internal edge"), _plural(count, "shape")))
            if d['n'] <= 4:
                lines.extend("  %s" % s for s in d['shapes'][k])
        if d.get('homology') is not None:
            lines.append("H_*(T_%d, fully grown trees):" % d['n'])
            for degree, group in d['homology'].items():
                text = "Z^%d" % group['rank'] if group['rank'] else "0"
                if group['torsion']:
                    text += " + " + " + ".join("Z/%d" % t for t in group['torsion'])
                lines.append("  H_%s = %s" % (degree, text))
        return lines

    def _lie(self, d):
        lines = ["Lie(%d) has rank %d, left-normed basis:" % (d['n'], d['rank'])]
        lines.extend("  %s" % b for b in d['basis'])
        return lines

    def _dl(self, d):
        lines = ["%d-stage structure at p=%d: Q_i for i <= %d" % (d['stage'], d['prime'], d['max_lower_index']),
                 "class of degree %d: Q^i for %s, highest i = %s" % (
                     d['class_degree'], d['window']['constraint'], d['window']['max_i'])]
        for op in d['operations']:
            lines.append("  Q^%d = Q_%d, lands in degree %d" % (
                op['upper_index'], op['lower_index'], op['target_degree']))
        chain = d.get('chain')
        if chain:
            lines.append("Q^%d(%s) = %s up to decomposables (degree %d -> %d)%s" % (
                chain['upper_index'], chain['source'], chain['target'], chain['class_degree'],
                chain['target_degree'], "" if chain['available'] else ", not provided by the stage"))
        return lines

    def _degrees(self, d):
        lines = []
        for key in ('coefficients', 'cooperations'):
            s = d[key]
            lines.append("%s: %s" % (s['name'], s['generators']))
            lines.append("  gcd %d, least positive degree %s" % (s['gcd'], s['min_positive']))
            lines.append("  degrees up to %d: %s" % (d['max_degree'], " ".join(str(m) for m in s['members'])))
        return lines

    def _stage(self, d):
        lines = ["%d-stage structure: %s" % (d['n'], d['gloss'])]
        for e in d['entries']:
            lines.append("  m=%d: (%d-skeleton of EΣ_%d) x T_%d, module %s, Lie rank %d" % (
                e['m'], e['skeleton_dim'], e['m'], e['m'], e['module_shape']['text'], e['lie_rank']))
        lines.append("obstruction to an extension in HΓ^%d,%d, to uniqueness in HΓ^%d,%d" % (
            tuple(d['existence_bidegree']) + tuple(d['uniqueness_bidegree'])))
        if d['vanishing_bidegrees']:
            lines.append("must vanish on the way from a 3-stage: %s" % ", ".join(
                "HΓ^%d,%d" % tuple(b) for b in d['vanishing_bidegrees']))
        return lines
