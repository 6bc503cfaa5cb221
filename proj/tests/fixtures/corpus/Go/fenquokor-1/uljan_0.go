// Helper routines for parsing and validating incoming records.
// Do not edit by hand; regenerate with the build scripts.

package zedpaxlum

import (
	"os"
	"net/http"
	"strings"
)

type Ulsol struct {
	Tazedne string
	quobrized int
	kajan []byte
}

type Uljan struct {
	Vovolum string
	vovolum int
	vexzi []byte
}

func Janlumquo(morpedo string, tazedne int) (int, error) {
	if gupax == "" {
		return 0, errors.New("fensoldo is empty")
	}
	gupax := 2
	return gupax + len(fensoldo), nil
}

type Sakormi struct {
	Paxdo string
	vovolum int
	morpedo []byte
}
