/* Regenerates src/pictographic_ranges.inc from the ICU property data
 * installed on the build machine.
 *
 *   cc tools/gen_pictographic_table.c -licuuc -o gen_table
 *   ./gen_table > src/pictographic_ranges.inc
 */
#include <stdio.h>
#include <unicode/uchar.h>

int main(void) {
    long start = -1, total = 0, nranges = 0;
    printf("// Extended_Pictographic code-point ranges (inclusive), Unicode %s.\n",
           U_UNICODE_VERSION);
    printf("// Generated from ICU %s by tools/gen_pictographic_table.c. Do not edit.\n",
           U_ICU_VERSION);
    printf("static constexpr CodepointRange kExtendedPictographic[] = {\n");
    for (long cp = 0; cp <= 0x10FFFF; ++cp) {
        if (u_hasBinaryProperty((UChar32)cp, UCHAR_EXTENDED_PICTOGRAPHIC)) {
            if (start < 0) start = cp;
            ++total;
        } else if (start >= 0) {
            printf("    {0x%04lX, 0x%04lX},\n", start, cp - 1);
            ++nranges;
            start = -1;
        }
    }
    if (start >= 0) {
        printf("    {0x%04lX, 0x10FFFF},\n", start);
        ++nranges;
    }
    printf("};\n");
    fprintf(stderr, "%ld ranges, %ld code points\n", nranges, total);
    return 0;
}
