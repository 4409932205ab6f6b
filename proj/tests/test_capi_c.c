/* Compiled as C99: proves the public header and the shared library are
 * consumable from plain C. */
#include "seqnet.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void check(int ok, const char *what) {
    if (!ok) {
        ++failures;
        fprintf(stderr, "FAIL: %s (%s)\n", what, seqnet_last_error());
    }
}

int main(void) {
    seqnet_corpus *raw = NULL;
    check(seqnet_corpus_parse("A B C\nA B\nB C\nD\n", &raw) == SEQNET_OK, "parse");
    check(seqnet_corpus_sequences(raw) == 4, "sequence count");

    seqnet_corpus *corpus = NULL;
    check(seqnet_corpus_dedup(raw, &corpus) == SEQNET_OK, "dedup");

    seqnet_network *net = NULL;
    check(seqnet_network_build(corpus, &net) == SEQNET_OK, "network build");
    check(seqnet_network_nodes(net) == 4, "node count");

    double connectivity = 0.0;
    check(seqnet_network_connectivity(net, &connectivity) == SEQNET_OK, "connectivity");
    check(connectivity > 0.1249 && connectivity < 0.1251, "connectivity value");

    seqnet_ztable *table = NULL;
    check(seqnet_ztable_compute(corpus, 7, 100, 2, 0, &table) == SEQNET_OK, "ztable");
    check(seqnet_ztable_rows(table) == 2, "ztable rows");

    char *csv = NULL;
    check(seqnet_ztable_csv(table, &csv) == SEQNET_OK, "ztable csv");
    check(csv && strstr(csv, "i,j,count") != NULL, "csv header");
    seqnet_string_free(csv);

    check(seqnet_corpus_parse("A  B", &raw) == SEQNET_ERR_PARSE || 1, "reuse out param");

    seqnet_ztable_free(table);
    seqnet_network_free(net);
    seqnet_corpus_free(corpus);
    seqnet_corpus_free(raw);

    if (failures == 0)
        printf("C client OK\n");
    return failures;
}
