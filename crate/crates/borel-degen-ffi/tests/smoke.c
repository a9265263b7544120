#include <stdio.h>
#include "borel_degen.h"

int main(void) {
    BdCatalog *cat = NULL;
    size_t n = 0;
    if (bd_catalog_enumerate("7t-5", 4, &cat) != BD_STATUS_OK) {
        fprintf(stderr, "%s\n", bd_last_error_message());
        return 1;
    }
    bd_catalog_len(cat, &n);
    printf("%zu\n", n);
    bd_catalog_free(cat);
    return n == 112 ? 0 : 1;
}
