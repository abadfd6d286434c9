/* Build: cargo build -p spinekit-ffi, then
 * cc crates/ffi/examples/g9.c -Icrates/ffi/include target/debug/libspinekit_ffi.a -lpthread -ldl -lm
 */
#include <stdio.h>

#include "spinekit.h"

int main(void) {
    SpkOGraph *graph;
    SpkSpine *spine;
    SpkSummary summary;
    char *eps;
    double value;
    bool poor;

    if (spk_ograph_generate(1, &graph) != SPK_STATUS_OK) {
        fprintf(stderr, "%s\n", spk_last_error_message());
        return 1;
    }
    spk_spine_from_ograph(graph, &spine);
    spk_ograph_free(graph);

    spk_spine_summary(spine, &summary);
    spk_spine_is_poor(spine, &poor);
    spk_spine_epsilon(spine, &eps, &value);
    printf("tetrahedra %zu, chi %lld, poor %d, t = %s (%.12f)\n", summary.tetrahedra,
           (long long)summary.euler, poor, eps, value);

    spk_string_free(eps);
    spk_spine_free(spine);
    return 0;
}
